from .constants import (
  A_INDEX_POINTER as A_INDEX_POINTER,
)
from .constants import (
  DEFAULT_GROUP_WIDTH as DEFAULT_GROUP_WIDTH,
)
from .constants import (
  EMPTY_KEY as EMPTY_KEY,
)
from .constants import (
  INVALID_ADDRESS as INVALID_ADDRESS,
)
from .constants import (
  INVALID_LANE as INVALID_LANE,
)
from .constants import (
  INVALID_VERTEX as INVALID_VERTEX,
)
from .constants import (
  TOMBSTONE_KEY as TOMBSTONE_KEY,
)
from .constants import (
  is_valid_vertex as is_valid_vertex,
)
from .slab_store import (
  HeadArena as HeadArena,
)
from .slab_store import (
  InsertOutcome as InsertOutcome,
)
from .slab_store import (
  SlabLayout as SlabLayout,
)
from .slab_store import (
  SlabList as SlabList,
)
from .slab_store import (
  SlabPool as SlabPool,
)
from .slab_store import (
  head_arena_build as head_arena_build,
)
from .slab_store import (
  list_delete as list_delete,
)
from .slab_store import (
  list_insert as list_insert,
)
from .slab_store import (
  list_search as list_search,
)
from .slab_store import (
  slab_alloc as slab_alloc,
)
