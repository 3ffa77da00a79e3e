# ------------ Classical Kinds ------------
KIND_HERMITE = 'hermite'
KIND_LAGUERRE = 'laguerre'
KIND_JACOBI = 'jacobi'

# ------------ Weight Families ------------
WEIGHT_GAUSSIAN_EVEN = 'gaussian-even'
WEIGHT_GENERALIZED_HERMITE = 'generalized-hermite'
WEIGHT_JACOBI_TRIG = 'jacobi-trig'
WEIGHT_CUSTOM = 'custom'

# ------------ Dunkl-SUSY Family Selectors ------------
FAMILY_HERMITE_SUSY = 'hermite-susy'
FAMILY_LAGUERRE_SUSY = 'laguerre-susy'
FAMILY_JACOBI_SUSY = 'jacobi-susy'
SUSY_FAMILIES = [
    FAMILY_HERMITE_SUSY,
    FAMILY_LAGUERRE_SUSY,
    FAMILY_JACOBI_SUSY,
]
CLASSICAL_FAMILIES = [
    KIND_HERMITE,
    KIND_LAGUERRE,
    KIND_JACOBI,
]

# ------------ Odd Potential Kinds ------------
POTENTIAL_KIND_LINEAR = 'linear'
POTENTIAL_KIND_RADIAL_LINEAR = 'radial-linear'
POTENTIAL_KIND_TANH = 'tanh'
POTENTIAL_KIND_TAN = 'tan'
POTENTIAL_KIND_COTH_COSECH = 'coth-cosech'
POTENTIAL_KIND_TAN_COT = 'tan-cot'
POLYNOMIAL_PRESERVING_KINDS = [
    POTENTIAL_KIND_LINEAR,
    POTENTIAL_KIND_RADIAL_LINEAR,
]

# ------------ Shape Invariant Potentials ------------
SPEC_SHIFTED_OSCILLATOR = 'shifted-oscillator'
SPEC_SCARF_II = 'scarf2'
SPEC_SCARF_I = 'scarf1'
SPEC_THREE_D_OSCILLATOR = '3d-oscillator'
SPEC_GEN_POSCHL_TELLER = 'gen-poschl-teller'
SPEC_POSCHL_TELLER = 'poschl-teller'
POTENTIAL_SPECS = [
    SPEC_SHIFTED_OSCILLATOR,
    SPEC_SCARF_II,
    SPEC_SCARF_I,
    SPEC_THREE_D_OSCILLATOR,
    SPEC_GEN_POSCHL_TELLER,
    SPEC_POSCHL_TELLER,
]

# ------------ Partner Levels ------------
LEVEL_PARTNER_1 = 1
LEVEL_PARTNER_2 = 2

# ------------ Domain Cases ------------
CASE_A = 'A'
CASE_B = 'B'

# ------------ Parities ------------
PARITY_EVEN = 'even'
PARITY_ODD = 'odd'
PARITY_NONE = 'none'

# ------------ Tolerances ------------
RELATIVE_EQUALITY_TOLERANCE = 1e-11
GRAM_TOLERANCE = 1e-9
EIGEN_TOLERANCE = 1e-9
POINTWISE_EIGEN_TOLERANCE = 1e-7
RECURRENCE_TOLERANCE = 1e-11
SHAPE_INVARIANCE_TOLERANCE = 1e-10
INTERTWINING_TOLERANCE = 1e-7
ANNIHILATION_TOLERANCE = 1e-10
COEFFICIENT_CONSISTENCY_TOLERANCE = 1e-8
IMAGINARY_PART_TOLERANCE = 1e-10
EIGENFUNCTION_GRAM_TOLERANCE = 1e-7

# ------------ Numerical Settings ------------
SINGULARITY_RADIUS = 1e-8
FINITE_DIFFERENCE_STEP = 1e-6
ORIGIN_EXCLUSION_RADIUS = 1e-6
DEFAULT_GRID_SIZE = 200
ORACLE_DIGITS = 30

# ------------ Output Formats ------------
FORMAT_TABLE = 'table'
FORMAT_CSV = 'csv'
FORMAT_JSON = 'json'
OUTPUT_FORMATS = [
    FORMAT_TABLE,
    FORMAT_CSV,
    FORMAT_JSON,
]
MACHINE_DIGITS = 17
TABLE_DIGITS = 6

# ------------ Exit Codes ------------
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE_ERROR = 2
