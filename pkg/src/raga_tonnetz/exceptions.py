class RagaTonnetzError(Exception):
    """Base class for errors raised by this package."""


class UnknownSwara(RagaTonnetzError, ValueError):
    def __init__(self, token):
        super().__init__(f"unknown swara {token!r}")
        self.token = token


class DuplicateSwara(RagaTonnetzError, ValueError):
    def __init__(self, token):
        super().__init__(f"duplicate swara {token!r}")
        self.token = token


class EmptyPitchSet(RagaTonnetzError, ValueError):
    def __init__(self):
        super().__init__("pitch set is empty")


class UnknownRaga(RagaTonnetzError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown raga {self.name!r}"
