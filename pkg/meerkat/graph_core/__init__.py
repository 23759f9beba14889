from .edge_batch import EdgeBatch as EdgeBatch
from .graph import DynamicGraph as DynamicGraph
from .graph import HashParams as HashParams
from .graph import MemoryStats as MemoryStats
from .graph import bucket_counts as bucket_counts
from .graph import bucket_of as bucket_of
from .graph import degree as degree
from .graph import delete_edges as delete_edges
from .graph import edge_count as edge_count
from .graph import graph_from_batch as graph_from_batch
from .graph import graph_new as graph_new
from .graph import insert_edges as insert_edges
from .graph import search_edge as search_edge
from .graph import seal_updates as seal_updates
from .graph import snapshot_adjacency as snapshot_adjacency
