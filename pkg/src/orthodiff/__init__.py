"""Exact toolkit for orthogonal polynomial systems and their differential-operator forms."""
from .exactfield import GaussianRational, binom, gen_binom, parse_scalar, format_scalar
from .poly import Poly
from .diffop import DiffOp, GammaSeq, ExpOpParams, apply, apply_gamma, extract, exp_gamma
from .opsfam import (
    TTRSpec,
    ttr_generate,
    hermite_std,
    hermite_gen,
    laguerre,
    shift_system,
    pd_check,
)
from .classify import ExpForm, NotOps, classify_gamma, check_ode_coeffs, verify_ttr_equivalence
from .laguerreop import a_closed, a_recursive, build_p, identity_check, verify_theorem
from .rootcheck import RootReport, squarefree, count_real_roots, interlace, preservation_test

__version__ = "0.1.0"
