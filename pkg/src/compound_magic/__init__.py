"""Compound magic squares built from Frierson couples, with exact singular-value analysis."""
from .construction import (
    CATALOG_NAMES,
    Couple,
    FriersonSpec,
    LucasParams,
    catalog,
    catalog_spec,
    compound,
    construct_frierson,
    frierson_block,
    lucas_square,
    mppd_compound,
    offset_grid,
)
from .enumeration import (
    ClanKey,
    clan_members,
    clan_table,
    counting_table,
    enumerate_assignments,
    enumerate_clans,
    lowest_entropy_series,
    mppd_series,
)
from .errors import (
    CMSError,
    InvalidLevelError,
    InvalidOrderError,
    InvalidSpecError,
    InvalidStepError,
    NotFoundError,
    ShapeError,
    UndefinedMeasureError,
    VerificationError,
)
from .io import SquareDocument, render_pretty
from .matrix import BlockGrid, IntSquareMatrix, addition_table, block_compose, block_decompose, kronecker, ones_matrix
from .measures import MeasureReport, entropy_compression, zero_based_shift
from .properties import PropertyReport, analyze_properties, equivalent_up_to_symmetry, symmetry_variants
from .spectra import (
    SpectralProfile,
    closed_form_svs,
    closed_form_svs_mppd,
    fourth_power_indices,
    m3_characteristic_checks,
    singular_values_numeric,
)

__version__ = "0.1.0"
