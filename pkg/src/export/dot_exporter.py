"""
Graphviz DOT output for the dual tree D_P.
"""

from pathlib import Path
from typing import Optional

from ..dual_tree.regions import is_leaf_profile, is_pants_profile
from ..dual_tree.tree import DualTree
from ..models.schemas import RegionProfile
from ..utils.logger import get_logger

logger = get_logger(__name__)


def _node_style(profile: RegionProfile) -> str:
    if is_leaf_profile(profile):
        return f'label="{profile.vertices[0]}", shape=circle, fillcolor="lightblue"'
    if is_pants_profile(profile):
        return 'label="P2", shape=box, fillcolor="lightyellow"'
    return (f'label="R{profile.region} (deg {profile.degree}, {profile.interior_vertices}v)", '
            'shape=box, fillcolor="lightcoral"')


def generate_dot(tree: DualTree, output_path: Optional[str] = None) -> str:
    """Leaves are labelled with their vertex, pairs of pants P2, edges with the track's crossing count."""
    dot_content = [
        "graph DP {",
        "  node [style=filled, fontname=\"Arial\"];",
        "  edge [fontname=\"Arial\", fontsize=10];",
        "",
    ]
    for node in sorted(tree.graph.nodes):
        profile = tree.graph.nodes[node]['profile']
        dot_content.append(f"  r{node} [{_node_style(profile)}];")

    dot_content.append("")
    for r1, r2, key, data in sorted(tree.graph.edges(keys=True, data=True), key=lambda item: item[2]):
        dot_content.append(f"  r{r1} -- r{r2} [label=\"{data['n']}\"];  // track {key}")
    dot_content.append("}")
    dot_content = "\n".join(dot_content) + "\n"

    if output_path:
        Path(output_path).write_text(dot_content)
        logger.info(f"DOT saved to: {output_path}")
    return dot_content
