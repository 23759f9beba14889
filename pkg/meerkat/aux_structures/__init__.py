from .union_find import UnionFind as UnionFind
from .union_find import uf_compress_all as uf_compress_all
from .union_find import uf_find as uf_find
from .union_find import uf_new as uf_new
from .union_find import uf_union_async as uf_union_async
