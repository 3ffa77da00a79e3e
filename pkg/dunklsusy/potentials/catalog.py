from dunklsusy.constants import SPEC_GEN_POSCHL_TELLER
from dunklsusy.constants import SPEC_POSCHL_TELLER
from dunklsusy.constants import SPEC_SCARF_I
from dunklsusy.constants import SPEC_SCARF_II
from dunklsusy.constants import SPEC_SHIFTED_OSCILLATOR
from dunklsusy.constants import SPEC_THREE_D_OSCILLATOR
from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import UnknownSelectorError
from dunklsusy.potentials.oscillator import ShiftedOscillator
from dunklsusy.potentials.oscillator import ThreeDOscillator
from dunklsusy.potentials.poschl_teller import GeneralizedPoschlTeller
from dunklsusy.potentials.poschl_teller import PoschlTeller
from dunklsusy.potentials.scarf import ScarfI
from dunklsusy.potentials.scarf import ScarfII

SPECS = {
    SPEC_SHIFTED_OSCILLATOR: ShiftedOscillator,
    SPEC_SCARF_II: ScarfII,
    SPEC_SCARF_I: ScarfI,
    SPEC_THREE_D_OSCILLATOR: ThreeDOscillator,
    SPEC_GEN_POSCHL_TELLER: GeneralizedPoschlTeller,
    SPEC_POSCHL_TELLER: PoschlTeller,
}


def spec_class(name):
    try:
        return SPECS[name]
    except KeyError:
        raise UnknownSelectorError(
            'Unknown potential {!r}; expected one of {}'.format(
                name, sorted(SPECS),
            ),
        )


def build_spec(name, **params):
    """Instantiate a potential by its catalog name.

    :param name: required
    :type name: str in POTENTIAL_SPECS

    :returns: PotentialSpec

    :raises: UnknownSelectorError, ParameterDomainError
    """
    return spec_class(name)(**params)


def list_specs():
    """[(name, display name, parameter names, case)] in catalog order."""
    return [
        (name, cls.display_name, cls.parameter_names, cls.case)
        for name, cls in SPECS.items()
    ]


def spec_from_json(data):
    """Inverse of PotentialSpec.to_json."""
    if not isinstance(data, dict) or 'name' not in data:
        raise ParameterDomainError(
            'A potential description needs a name, got {!r}'.format(data),
        )
    return build_spec(data['name'], **dict(data.get('params') or {}))
