from dunklsusy.constants import CLASSICAL_FAMILIES
from dunklsusy.constants import EXIT_OK
from dunklsusy.constants import EXIT_USAGE_ERROR
from dunklsusy.constants import EXIT_VERIFICATION_FAILED
from dunklsusy.constants import POTENTIAL_SPECS
from dunklsusy.constants import SUSY_FAMILIES
from dunklsusy.potentials.catalog import SPECS

from tests.constants import POTENTIAL_PARAMS


class TestConstants():
    def test_constants_have_regular_structure(self):
        assert list(SPECS.keys()) == POTENTIAL_SPECS
        assert sorted(POTENTIAL_PARAMS) == sorted(POTENTIAL_SPECS)
        for name, cls in SPECS.items():
            assert cls.name == name
            assert tuple(sorted(POTENTIAL_PARAMS[name])) \
                == tuple(sorted(cls.parameter_names))

        selectors = SUSY_FAMILIES + CLASSICAL_FAMILIES + POTENTIAL_SPECS
        assert len(set(selectors)) == len(selectors)

    def test_exit_codes_are_distinct(self):
        assert [EXIT_OK, EXIT_VERIFICATION_FAILED, EXIT_USAGE_ERROR] \
            == [0, 1, 2]
