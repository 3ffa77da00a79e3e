import json

import pytest

from dunklsusy.constants import CASE_A
from dunklsusy.constants import CASE_B
from dunklsusy.constants import POTENTIAL_SPECS
from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import UnknownSelectorError
from dunklsusy.potentials.catalog import build_spec
from dunklsusy.potentials.catalog import list_specs
from dunklsusy.potentials.catalog import spec_class
from dunklsusy.potentials.catalog import spec_from_json
from dunklsusy.potentials.oscillator import ShiftedOscillator

from tests.constants import POTENTIAL_PARAMS


class TestCatalog():

    def test_list_specs(self):
        rows = list_specs()
        assert [row[0] for row in rows] == POTENTIAL_SPECS
        cases = {name: case for name, _, _, case in rows}
        assert cases['shifted-oscillator'] == CASE_A
        assert cases['scarf1'] == CASE_A
        assert cases['3d-oscillator'] == CASE_B
        assert cases['poschl-teller'] == CASE_B
        assert rows[0][1] == 'shifted oscillator'

    def test_build_spec(self):
        spec = build_spec('shifted-oscillator', s=1.0)
        assert isinstance(spec, ShiftedOscillator)
        assert spec == ShiftedOscillator(s=1.0)
        assert spec != ShiftedOscillator(s=2.0)
        assert repr(spec) == 'ShiftedOscillator(s=1.0)'
        with pytest.raises(UnknownSelectorError):
            spec_class('harmonic')

    def test_parameter_validation(self):
        with pytest.raises(ParameterDomainError):
            build_spec('gen-poschl-teller', A=3.0, B=3.0, alpha=1.0)
        with pytest.raises(ParameterDomainError):
            build_spec('gen-poschl-teller', A=4.0, B=3.0, alpha=1.0)
        with pytest.raises(ParameterDomainError):
            build_spec('shifted-oscillator', s=0.0)
        with pytest.raises(ParameterDomainError):
            build_spec('scarf1', A=2.0, alpha=-1.0)
        with pytest.raises(ParameterDomainError):
            build_spec('3d-oscillator', s=1.0, l=-1.0)
        with pytest.raises(ParameterDomainError):
            build_spec('scarf2', A=2.0)
        with pytest.raises(ParameterDomainError):
            build_spec('scarf2', A=2.0, alpha=1.0, B=3.0)

    def test_json_round_trip(self):
        for name, params in POTENTIAL_PARAMS.items():
            spec = build_spec(name, **params)
            data = json.loads(json.dumps(spec.to_json()))
            assert spec_from_json(data) == spec
        with pytest.raises(ParameterDomainError):
            spec_from_json({'params': {'s': 1.0}})
