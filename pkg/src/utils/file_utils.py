"""
File utilities for tracklab.
Loads and saves triangulation, pattern and curve-system files (JSON, or YAML by extension).
"""

import json
from pathlib import Path
from typing import Type, TypeVar

import yaml
from pydantic import BaseModel, ValidationError

from ..errors import FileFormatError
from ..models.schemas import CurveSystemFile, PatternFile, TriangulationFile
from ..patterns.coords import PatternCoords, pattern_from_file
from ..surface.triangulation import Triangulation, build_triangulation
from .logger import get_logger

logger = get_logger(__name__)

Model = TypeVar('Model', bound=BaseModel)

YAML_SUFFIXES = {'.yaml', '.yml'}


class FileUtils:
    """Utility class for tracklab file formats."""

    @staticmethod
    def read_data(path: str):
        file_path = Path(path)
        if not file_path.is_file():
            raise FileFormatError(f"file not found: {path}")
        text = file_path.read_text(encoding='utf-8')
        try:
            if file_path.suffix.lower() in YAML_SUFFIXES:
                return yaml.safe_load(text)
            return json.loads(text)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            raise FileFormatError(f"{path}: {e}") from e

    @staticmethod
    def load_model(path: str, model: Type[Model]) -> Model:
        """Parse a file into a pydantic model, mapping schema errors to FileFormatError."""
        try:
            return model.model_validate(FileUtils.read_data(path))
        except ValidationError as e:
            raise FileFormatError(f"{path} is not a valid {model.__name__}: {e.error_count()} error(s)\n{e}") from e

    @staticmethod
    def save_model(data: BaseModel, path: str) -> None:
        file_path = Path(path)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        payload = data.model_dump(mode='json', exclude_none=True)
        if file_path.suffix.lower() in YAML_SUFFIXES:
            file_path.write_text(yaml.safe_dump(payload, sort_keys=False))
        else:
            file_path.write_text(json.dumps(payload, indent=2) + "\n")
        logger.debug(f"Saved {type(data).__name__} to {file_path}")

    @staticmethod
    def load_triangulation(path: str) -> Triangulation:
        data = FileUtils.load_model(path, TriangulationFile)
        return build_triangulation(data.faces, data.vertices)

    @staticmethod
    def triangulation_file(tri: Triangulation) -> TriangulationFile:
        return TriangulationFile(vertices=tri.vertex_count, faces=[list(face) for face in tri.faces])

    @staticmethod
    def save_triangulation(tri: Triangulation, path: str) -> None:
        FileUtils.save_model(FileUtils.triangulation_file(tri), path)

    @staticmethod
    def load_pattern(tri: Triangulation, path: str) -> PatternCoords:
        return pattern_from_file(tri, FileUtils.load_model(path, PatternFile))

    @staticmethod
    def load_curve_file(path: str) -> CurveSystemFile:
        return FileUtils.load_model(path, CurveSystemFile)
