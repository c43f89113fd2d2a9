""" Distance metrics and extremal orders of Cayley digraphs of finite Abelian groups. """

from . import support

from .errors import *

from .group import AbelianGroup, GroupElement, GroupSpec, CanonicalMap
from .group import canonicalize, canonical_map, add, negate, rank_of

from .enumeration import enumerate_abelian_groups, count_abelian_groups

from .literals import parse_group, parse_group_spec, parse_elements, parse_element

from . import metrics
from .metrics import GeneratingSet, DistanceProfile, DistanceCertificate, UNREACHABLE
from .metrics import bfs_profile, diameter, is_generating, farthest_set, average_distance
from .metrics import certify_distance, adjacency

from . import extremal
from .extremal import search_m_cyclic, search_m_star, certify_counterexample
from .extremal import build_star_construction, table1_families, min_diameter_for_order, avg_distance_frontier

from . import report
