from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version('tricusp')
except PackageNotFoundError:
    __version__ = 'unknown'

from tricusp.field import (
    QQ,
    Field,
    FieldElement,
    RationalField,
    PrimeField,
    ExtensionField,
    field_inverse,
    ext_embed,
    find_irreducible,
)
from tricusp.poly import Poly, PolyRing, parse, exact_div, localize, random_homogeneous
from tricusp.groebner import Ideal, GroebnerBasis, buchberger, solve_points, quotient_dimension
from tricusp.singular import SingularPoint, SingularScheme, find_singular_points, classify
from tricusp.families import SurfaceInstance, PredictedCensus, construct, minimal_table
from tricusp.certify import Certificate, VerificationReport, verify_family
from tricusp.oracle import ScanResult, scan_projective, cross_check
from tricusp.config import RunConfig, load_config
from tricusp.runner import Runner, run_command

from tricusp import errors
from tricusp import field
from tricusp import poly
from tricusp import groebner
from tricusp import singular
from tricusp import families
from tricusp import certify
from tricusp import oracle
from tricusp import report
from tricusp import util
