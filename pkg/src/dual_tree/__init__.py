from .regions import Region, RegionDecomposition, decompose, region_profile
from .theorem import build_dual_tree, check_tree, verify_theorem1
from .tree import DualTree, dual_tree, edge_path, edge_walk

__all__ = [
    'DualTree', 'Region', 'RegionDecomposition', 'build_dual_tree', 'check_tree', 'decompose',
    'dual_tree', 'edge_path', 'edge_walk', 'region_profile', 'verify_theorem1',
]
