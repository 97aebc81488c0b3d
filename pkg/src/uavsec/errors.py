"""Exception hierarchy shared across the package.

Everything raised on purpose derives from UavsecError so callers can
catch simulator problems without swallowing genuine bugs.
"""


class UavsecError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(UavsecError, ValueError):
    """Malformed numeric input: wrong shape, wrong dtype, NaN or Inf."""


class NumericalError(UavsecError, ArithmeticError):
    """A factorization or solve broke down on an ill-conditioned input."""


class DegenerateChannelError(UavsecError, ValueError):
    """A channel with no energy where a propagation direction is required."""


class DegeneratePrecoderError(UavsecError, ValueError):
    """A zero precoder column cannot carry a nonzero power budget."""


class DegenerateTargetError(UavsecError, ValueError):
    """SINR targets must be strictly positive and finite."""


class ConfigError(UavsecError, ValueError):
    """Bad configuration value; the message names the offending key."""
