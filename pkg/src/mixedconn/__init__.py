"""Mixed connectivity of multigraphs.

Triconnected components, 2.5-connected components via the red/green
coloring of virtual edges, critical 2.5-connected graphs and their
reductions, and cycle decompositions of Eulerian graphs.
"""

from .coloring import (
    Color,
    Components25,
    color_virtual_edges,
    components_25,
    is_25_connected,
    is_triconnected,
    simulate_coloring,
    tree_is_minor,
)
from .components import (
    Component,
    ComponentKind,
    ComponentSet,
    ComponentTree,
    component_tree,
    merge_all,
    to_dot,
    to_json,
)
from .critical import (
    is_critical_structural,
    is_degenerate_graph,
    is_degenerate_separator,
    reduce_degenerate,
    reduce_nondegenerate,
    reduction_chain,
    tutte_extend,
    tutte_step,
)
from .cycles import (
    c_via_components,
    hajos_bound,
    hajos_check,
    is_eulerian,
    max_cycles,
    min_cycles,
    multi_excess,
    nu_via_components,
)
from .equivalence import are_equivalent, graphs_isomorphic
from .errors import GraphError
from .graph import Edge, LabeledMultigraph, build, ear_of, ears, parse, read_mg, serialize, write_mg
from .splitmerge import direct_split_sequence, merge, split, split_25, triconnected_components

__version__ = "0.1.0"
