from meerkat.algorithms import bfs_decremental as bfs_decremental
from meerkat.algorithms import bfs_incremental as bfs_incremental
from meerkat.algorithms import bfs_static as bfs_static
from meerkat.algorithms import pagerank as pagerank
from meerkat.algorithms import pagerank_dynamic as pagerank_dynamic
from meerkat.algorithms import pagerank_init as pagerank_init
from meerkat.algorithms import sssp_decremental as sssp_decremental
from meerkat.algorithms import sssp_incremental as sssp_incremental
from meerkat.algorithms import sssp_static as sssp_static
from meerkat.algorithms import tc_decremental as tc_decremental
from meerkat.algorithms import tc_incremental as tc_incremental
from meerkat.algorithms import tc_static as tc_static
from meerkat.algorithms import wcc_incremental as wcc_incremental
from meerkat.algorithms import wcc_init as wcc_init
from meerkat.algorithms import wcc_static as wcc_static
from meerkat.exceptions import MeerkatException as MeerkatException
from meerkat.graph_core import DynamicGraph as DynamicGraph
from meerkat.graph_core import EdgeBatch as EdgeBatch
from meerkat.graph_core import delete_edges as delete_edges
from meerkat.graph_core import graph_new as graph_new
from meerkat.graph_core import insert_edges as insert_edges
from meerkat.graph_core import search_edge as search_edge
from meerkat.graph_core import seal_updates as seal_updates
from meerkat.version import VERSION

__version__ = VERSION
