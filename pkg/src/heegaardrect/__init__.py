"""Rectangle and double rectangle conditions for Heegaard-splitting diagrams.

The package decides two diagrammatic criteria on the curve diagram formed
by a pair of disk systems on a closed oriented surface: the rectangle
condition (which implies strong irreducibility of the splitting) and the
double rectangle condition (which in addition implies finiteness of the
Goeritz group).  It also regenerates a built-in family of examples by
Dehn twisting a standard disk system along a transversal curve.
"""

from .criteria import (
    CriteriaContext,
    CriteriaGraph,
    Verdict,
    Witness,
    double_rectangle_condition,
    graph_G,
    graph_Gk,
    graph_H,
    graph_Hd,
    is_doubly_two_connected,
    is_two_connected,
    rectangle_condition,
)
from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    Face,
    FaceSide,
    MINUS,
    PLUS,
    intersection_number,
)
from .diagramio import (
    build_report,
    graph_to_dot,
    parse_diagram,
    report_to_json,
    report_to_text,
    serialize_diagram,
)
from .rectangles import (
    ComposedRectangleType,
    RectangleType,
    composed_rectangles,
    rectangle_faces,
)
from .systems import (
    CutComponent,
    ValidationReport,
    cut_components,
    lambda_set,
    validate_disk_systems,
)
from .twist import (
    TwistSpec,
    chain_base,
    dehn_twist,
    dehn_twist_iterated,
    example_diagram,
    maximal_chain_base,
    multicurve_map,
    twist_multicurve,
)

__all__ = [
    "Crossing", "CriteriaContext", "CriteriaGraph", "CutComponent", "Diagram",
    "DiagramError", "Face", "FaceSide", "MINUS", "PLUS", "RectangleType",
    "ComposedRectangleType", "TwistSpec", "ValidationReport", "Verdict",
    "Witness", "build_report", "chain_base", "composed_rectangles",
    "cut_components", "dehn_twist", "dehn_twist_iterated",
    "double_rectangle_condition", "example_diagram", "graph_G", "graph_Gk",
    "graph_H", "graph_Hd", "graph_to_dot", "intersection_number",
    "is_doubly_two_connected", "is_two_connected", "lambda_set",
    "maximal_chain_base", "multicurve_map", "parse_diagram",
    "rectangle_condition", "rectangle_faces", "report_to_json",
    "report_to_text", "serialize_diagram", "twist_multicurve",
    "validate_disk_systems",
]

__version__ = "0.1.0"
