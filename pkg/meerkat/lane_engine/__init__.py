from .atomics import AtomicArray as AtomicArray
from .frontier import Frontier as Frontier
from .lane_group import LaneGroup as LaneGroup
from .lane_group import group_ballot as group_ballot
from .lane_group import group_broadcast as group_broadcast
from .lane_group import group_dequeue as group_dequeue
from .lane_group import group_enqueue_frontier as group_enqueue_frontier
from .lane_group import group_ffs as group_ffs
from .lane_group import group_popcount as group_popcount
from .lane_group import group_reduce_min as group_reduce_min
from .lane_group import group_reduce_sum as group_reduce_sum
from .schemes import expand_bucket_pairs as expand_bucket_pairs
from .schemes import scheme1_for_each as scheme1_for_each
from .schemes import scheme1_update_for_each as scheme1_update_for_each
from .schemes import scheme2_for_each as scheme2_for_each
from .schemes import scheme2_for_each_slab as scheme2_for_each_slab
