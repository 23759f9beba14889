from .bfs import bfs_decremental as bfs_decremental
from .bfs import bfs_incremental as bfs_incremental
from .bfs import bfs_levels as bfs_levels
from .bfs import bfs_static as bfs_static
from .pagerank import PageRankState as PageRankState
from .pagerank import out_degrees as out_degrees
from .pagerank import pagerank as pagerank
from .pagerank import pagerank_dynamic as pagerank_dynamic
from .pagerank import pagerank_init as pagerank_init
from .sssp import INF as INF
from .sssp import INVALID_NODE as INVALID_NODE
from .sssp import DynamicRunStats as DynamicRunStats
from .sssp import SsspTree as SsspTree
from .sssp import node_distance as node_distance
from .sssp import node_parent as node_parent
from .sssp import pack as pack
from .sssp import sssp_decremental as sssp_decremental
from .sssp import sssp_decremental_frontier as sssp_decremental_frontier
from .sssp import sssp_incremental as sssp_incremental
from .sssp import sssp_invalidate as sssp_invalidate
from .sssp import sssp_propagate_invalidation as sssp_propagate_invalidation
from .sssp import sssp_static as sssp_static
from .triangles import TriangleDelta as TriangleDelta
from .triangles import tc_count as tc_count
from .triangles import tc_decremental as tc_decremental
from .triangles import tc_incremental as tc_incremental
from .triangles import tc_static as tc_static
from .wcc import WccState as WccState
from .wcc import count_labels as count_labels
from .wcc import wcc_incremental as wcc_incremental
from .wcc import wcc_init as wcc_init
from .wcc import wcc_static as wcc_static
