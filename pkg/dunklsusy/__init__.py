from dunklsusy.dunklsusy_client import Client
from dunklsusy.errors import DunklSusyError
from dunklsusy.errors import ParameterDomainError
from dunklsusy.errors import VerificationFailed

# Export useful helper functions and objects.
from dunklsusy.helpers.polynomial import DensePolynomial
from dunklsusy.operators.dunkl_operator import OddPotential
from dunklsusy.operators.dunkl_operator import apply_L
from dunklsusy.operators.dunkl_operator import apply_Y_poly
from dunklsusy.operators.dunkl_operator import eigencheck
from dunklsusy.polynomials.classical import ClassicalKind
from dunklsusy.polynomials.classical import eval_classical
from dunklsusy.polynomials.dunkl_susy import build_family
from dunklsusy.polynomials.dunkl_susy import coeffs_q
from dunklsusy.polynomials.dunkl_susy import eval_q
from dunklsusy.polynomials.dunkl_susy import recurrence_step
from dunklsusy.polynomials.symmetric import from_classical
from dunklsusy.polynomials.symmetric import hermite_system
from dunklsusy.potentials.catalog import build_spec
from dunklsusy.quadrature.gauss import gauss_rule
from dunklsusy.quadrature.gram import gram_matrix
from dunklsusy.quadrature.gram import orthonormal_view
