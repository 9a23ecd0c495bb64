"""Thompson's group F, its 3-colorable subgroup, and Fox colorings of Jones links."""

from .coloring import (
    ArcColoring,
    ColoringCount,
    EdgeColoring,
    LeafConflictError,
    coloring_matrix,
    coloring_number,
    count_colorings_bruteforce,
    edge_coloring,
    induced_3coloring,
    is_p_colorable,
    kernel_dimension,
)
from .diagram import (
    LinkDiagram,
    PDParseError,
    arcs_of,
    components_of,
    gauss_code,
    parse_pd,
    pd_code,
    unknot,
)
from .group import (
    Element,
    TreeDiagram,
    embed_f4,
    embed_f4_diagram,
    generator_w,
    generator_x,
    identity,
    insert_caret,
    inverse,
    multiply,
    parse_element,
    quaternary_generator,
    random_element,
    reduce,
    word_to_element,
)
from .jones import TangleGraph, build_graph, link_of, link_of_diagram, to_link_diagram
from .plmap import PLMap, pl_map
from .strip import (
    StripColoring,
    enumerate_strip_colorings,
    frontier_gaps,
    is_member,
    leaf_parity_ok,
    strip_coloring,
)
from .theorem import TheoremReport, sweep, verify_main_theorem
from .trees import LEAF, LEAF4, BinaryTree, QuaternaryTree, leaf_depths, parse_tree, to_text

__version__ = "0.1.0"
