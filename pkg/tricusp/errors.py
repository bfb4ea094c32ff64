'''
Exception hierarchy

Every error raised by the library derives from :class:`TricuspError` and from the
closest builtin, so ``except ValueError`` keeps working for callers that don't know
about this package.
'''


class TricuspError(Exception):
    pass


# -- field arithmetic ---------------------------------------------------------------
class ZeroInverse(TricuspError, ZeroDivisionError):
    pass

class IncompatibleFields(TricuspError, ValueError):
    pass

class CharacteristicMismatch(IncompatibleFields):
    pass


# -- polynomials --------------------------------------------------------------------
class FieldMismatch(IncompatibleFields):
    pass

class DivisionByZeroPoly(TricuspError, ZeroDivisionError):
    pass

class PolySyntaxError(TricuspError, ValueError):
    def __init__(self, message: str, text: str = '', position: int = 0):
        self.text = text
        self.position = position
        super().__init__(f'{message} at position {position}')

class UnknownVariable(PolySyntaxError):
    pass

class PointNotInChart(TricuspError, ValueError):
    pass


# -- solving ------------------------------------------------------------------------
class NotZeroDimensional(TricuspError, ArithmeticError):
    pass

class DegenerateCoordinates(TricuspError, RuntimeError):
    pass


# -- surfaces -----------------------------------------------------------------------
class NotASurface(TricuspError, ValueError):
    pass

class PositiveDimensionalSingularLocus(TricuspError, ArithmeticError):
    def __init__(self, chart: int):
        self.chart = chart
        super().__init__(f'singular locus is positive-dimensional in chart {chart}')

class NotSingular(TricuspError, ValueError):
    pass

class DegenerateInstance(TricuspError, RuntimeError):
    pass

class ConstructionFailed(DegenerateInstance):
    pass

class DegreeMismatch(TricuspError, ValueError):
    pass

class FieldTooLarge(TricuspError, ValueError):
    pass


# -- configuration ------------------------------------------------------------------
class ConfigError(TricuspError, ValueError):
    pass
