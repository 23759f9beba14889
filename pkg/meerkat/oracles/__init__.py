from .oracles import INF as INF
from .oracles import PlainGraph as PlainGraph
from .oracles import oracle_bfs as oracle_bfs
from .oracles import oracle_dijkstra as oracle_dijkstra
from .oracles import oracle_pagerank as oracle_pagerank
from .oracles import oracle_triangles as oracle_triangles
from .oracles import oracle_wcc as oracle_wcc
from .oracles import partition as partition
