"""Exception hierarchy shared by every module."""


class LatticeError(Exception):
    pass


class ParseError(LatticeError):
    pass


class DuplicateElement(LatticeError):
    def __init__(self, element):
        super().__init__(f"duplicate element {element!r}")
        self.element = element


class UnknownElement(LatticeError):
    def __init__(self, element):
        super().__init__(f"unknown element {element!r}")
        self.element = element


class CycleDetected(LatticeError):
    def __init__(self, elements):
        super().__init__(f"order relation has a cycle through {sorted(elements)}")
        self.elements = tuple(elements)


class NotALattice(LatticeError):
    def __init__(self, pair, missing):
        super().__init__(f"pair {pair} has no unique {missing}")
        self.pair = tuple(pair)
        self.missing = missing


class NotACongruence(LatticeError):
    pass


class NotAnAntichain(LatticeError):
    pass


class NotDoubled(LatticeError):
    pass


class NotIsolated(LatticeError):
    pass


class TooSmall(LatticeError):
    pass


class SizeLimit(LatticeError):
    pass
