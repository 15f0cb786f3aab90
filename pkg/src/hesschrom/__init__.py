"""Exact chromatic and path quasisymmetric functions of natural unit
interval orders, Tymoczko Betti numbers of regular Hessenberg varieties,
and the dot-action character of the symmetric group, with brute-force
verifiers for the identities connecting them."""

from .base import (
    BoundExceededError,
    Composition,
    DegreeMismatchError,
    Partition,
    Permutation,
    TPoly,
    compositions,
    is_palindromic,
    partitions,
    z_of,
)
from .betti import (
    BettiVector,
    Tableau,
    admissible_tableaux,
    betti_vector,
    c_coeffs,
    cell_dimension,
    check_palindromic,
    sw_to_t_bijection,
    unified_dimension,
    verify_sw_betti,
)
from .character import (
    ClassFunction,
    dot_character,
    e_positivity_report,
    fixed_space_dims,
    frobenius_image,
    irreducible_multiplicities,
    schur_positivity_report,
)
from .chromatic import chromatic_qsym, stable_ordered_partitions
from .hessenberg import (
    Digraph,
    Graph,
    HessenbergFunction,
    complement,
    digraph,
    enumerate_hessenberg,
    incomparability_graph,
    new_hessenberg,
    poset_relation,
    staircase,
    weight,
)
from .pathqsym import (
    OrderedPathCover,
    c_via_path_covers,
    ordered_path_covers,
    path_qsym,
    verify_reciprocity,
)
from .qsym import (
    NotSymmetricError,
    QSymElement,
    SymElement,
    expand_in_basis,
    f_to_m,
    generator,
    is_symmetric,
    kostka,
    m_to_f,
    omega,
    quasi_shuffle,
    to_m_basis,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
