"""Exact computation engine for centralizer censuses, isoclinism and
derived-length bounds of small finite groups."""

from .census import (
    CensusReport,
    RelativeCensus,
    cent_census,
    center,
    centralizer,
    psl2_nacent_formula,
    relative_census,
)
from .constructors import (
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    heisenberg,
    psl2,
    psu3,
    symmetric,
)
from .gf import Field, field
from .isoclinism import find_isomorphism, isoclinic, quotient
from .perm import (
    CapExceeded,
    PermGroup,
    SubgroupMask,
    TableGroup,
    close,
    commutes,
    compose,
    multiplication_table,
)
from .specs import SpecParseError, format_spec, parse_spec
from .structure import (
    BoundReport,
    DerivedSeries,
    all_subgroups,
    derived_length_bound,
    derived_series,
    derived_subgroup,
    is_nilpotent,
    maximal_subgroups,
    sylow_components,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
