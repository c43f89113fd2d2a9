
from .genset import GeneratingSet, as_generating_set

from .bfs import UNREACHABLE, DistanceProfile
from .bfs import bfs_profile, diameter, is_generating, farthest_set, average_distance
from .bfs import adjacency, levels, diameter_within

from .certificate import DistanceCertificate, Certifier, certify_distance, certify_all
