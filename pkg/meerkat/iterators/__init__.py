from .iterators import CursorKind as CursorKind
from .iterators import SlabCursor as SlabCursor
from .iterators import adjacency_arrays as adjacency_arrays
from .iterators import begin as begin
from .iterators import begin_at as begin_at
from .iterators import cursor_first_lane as cursor_first_lane
from .iterators import cursor_get as cursor_get
from .iterators import cursor_next as cursor_next
from .iterators import cursor_slab as cursor_slab
from .iterators import cursor_valid_lanes as cursor_valid_lanes
from .iterators import end as end
from .iterators import end_at as end_at
from .iterators import slab_neighbors as slab_neighbors
from .iterators import update_begin as update_begin
from .iterators import update_end as update_end
from .iterators import walk as walk
