from typing import Optional, Type


class IrcError(Exception):
    """General error of the interference relay channel lab."""

    code = 0
    _dflt_args = ("Unspecified error.",)

    def __init__(self, msg: Optional[str] = None) -> None:
        super().__init__(msg)
        self.args = self._dflt_args if msg is None else (msg,)

    @classmethod
    def create(cls, code: int) -> Type["IrcError"]:
        """ Create a new IrcError type with `code` error code. """
        cls.code = code
        return cls

    @property
    def hexcode(self) -> int:
        """ Error code in 16 bit length hexadecimal format. """
        return (self.code + (1 << 16)) % (1 << 16)

    def __str__(self) -> str:
        return "{} (0x{:04X} [{:d}])".format(
            self.args[0] if self.args else "", self.hexcode, self.code
        )


class InvalidInput(IrcError):
    """
    Raised, when an argument is malformed: bit words of mismatching
    length, negative levels, or parameters outside an operation's domain.
    """

    code = 0x10
    _dflt_args = ("Invalid input.",)


class OutOfScope(IrcError):
    """Raised, when a channel falls outside of the stronger-source regime."""

    code = 0x11
    _dflt_args = ("The channel is out of scope (n_s <= n_c).",)


class NoMatchingColumn(IrcError):
    """
    Raised, when none of the rate allocation columns of a scheme
    matches the channel parameters.
    """

    code = 0x20
    _dflt_args = ("No rate allocation column matches.",)


class LayoutOverflow(IrcError):
    """Raised, when the segments of a layout do not fit into q levels."""

    code = 0x21
    _dflt_args = ("The segments exceed the vector length.",)


class UnknownVariable(IrcError):
    """
    Raised, when an allocation and a constraint set disagree on the
    variable labels.
    """

    code = 0x30
    _dflt_args = ("Unknown variable.",)


class UndefinedOnFailure(IrcError):
    """Raised, when a rate is requested for a failed simulation."""

    code = 0x40
    _dflt_args = ("The rate is undefined for a failed simulation.",)


def _get_error(code: int) -> type:
    """ Return an error by code number. """
    if code == 0x10:
        return InvalidInput
    elif code == 0x11:
        return OutOfScope
    elif code == 0x20:
        return NoMatchingColumn
    elif code == 0x21:
        return LayoutOverflow
    elif code == 0x30:
        return UnknownVariable
    elif code == 0x40:
        return UndefinedOnFailure
    else:
        return IrcError.create(code)
