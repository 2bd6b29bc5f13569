"""
Flipclass machinery for the symmetric group: Bruhat-graph paths, flip-group
orbits, their support/time-support invariants, and the resulting recipe for
low-degree coefficients of Kazhdan-Lusztig R-tilde polynomials.
"""

from .perm import (
    Perm, Transposition, apply_transposition, bruhat_leq, edges_between,
    edges_into, edges_up, identity, length, longest_element, perm_from_str,
    perm_to_str,
)
from .paths import BruhatPath, enumerate_paths, is_increasing, path_from_labels
from .flips import Flipclass, flip2, flip_path, flipclass_of, flipclasses
from .invariants import (
    IotaPolynomial, SupportGraph, TimeSupportGraph, all_paths_effective,
    iota_polynomial, is_effective, prec, succ, support_graph, t_vector,
    time_support_graph,
)
from .reforder import (
    ReflectionOrdering, count_increasing, from_reduced_word, lex_first_path,
    lex_order, random_ordering, revlex_order, validate,
)
from .reduction import (
    LabelGraph, decompose, is_irreducible, label_graph, restrict,
    shuffle_product,
)
from .rtilde import (
    RTildePolynomial, cbar_h3, cbar_h4, cbar_h5, coeff_via_flipclasses,
    rtilde_dyer, rtilde_oracle,
)
from .classify import (
    CensusSummary, build_Ac, build_Ic, census, check_goodness,
    iter_flipclasses, probe_conjecture, write_classification,
)

__version__ = "0.1.0"
