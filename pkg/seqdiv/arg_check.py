from enum import Enum
from typing import *

from .errors import *

__all__ = [
    # general argument validators
    'validate_positive_int', 'validate_non_negative_float',
    'validate_unit_interval', 'validate_enum', 'validate_choices_list',
]


def validate_positive_int(arg_name: str, arg_value) -> int:
    ret = int(arg_value)
    if ret <= 0:
        raise ConfigValidationError(f'`{arg_name}` must be a positive int: '
                                    f'got {arg_value!r}')
    return ret


def validate_non_negative_float(arg_name: str, arg_value) -> float:
    ret = float(arg_value)
    if not (ret >= 0.):
        raise ConfigValidationError(f'`{arg_name}` must be a non-negative '
                                    f'float: got {arg_value!r}')
    return ret


def validate_unit_interval(arg_name: str, arg_value) -> float:
    ret = float(arg_value)
    if not (0. <= ret <= 1.):
        raise ConfigValidationError(f'`{arg_name}` must be in [0, 1]: '
                                    f'got {arg_value!r}')
    return ret


EnumT = TypeVar('EnumT', bound=Enum)


def validate_enum(arg_name: str, arg_value, enum_type: Type[EnumT]) -> EnumT:
    """
    Convert `arg_value` into a member of `enum_type`.

    Both the member values and their hyphenated spellings are accepted,
    e.g., ``'non-uniform'`` for :obj:`ProbabilityMode.NON_UNIFORM`.
    """
    if isinstance(arg_value, enum_type):
        return arg_value
    if isinstance(arg_value, str):
        key = arg_value.strip().lower().replace('-', '_')
        for member in enum_type:
            if member.value == key:
                return member
    choices = ', '.join(repr(m.value) for m in enum_type)
    raise ConfigValidationError(f'`{arg_name}` must be one of {choices}: '
                                f'got {arg_value!r}')


def validate_choices_list(arg_name: str,
                          arg_value: Union[str, Sequence[str]],
                          choices: Sequence[str]) -> List[str]:
    """
    Parse a comma-separated string (or a sequence of strings) into a
    non-empty list of unique names, each of which must be in `choices`.
    """
    if isinstance(arg_value, str):
        items = [s.strip().lower() for s in arg_value.split(',')]
    else:
        items = [str(s).strip().lower() for s in arg_value]
    items = [s for s in items if s]
    if not items:
        raise ConfigValidationError(f'`{arg_name}` must not be empty.')

    ret = []
    for s in items:
        if s not in choices:
            raise ConfigValidationError(
                f'`{arg_name}` contains an unknown name {s!r}; '
                f'choices are {", ".join(choices)}.')
        if s not in ret:
            ret.append(s)
    return ret
