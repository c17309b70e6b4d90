"""
JSON and YAML serialization of tracklab reports.
"""

import json
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import BaseModel

from ..utils.logger import get_logger

logger = get_logger(__name__)

FORMATS = ('json', 'yaml')


class ReportExporter:
    """Render pydantic reports (or plain data) as JSON or YAML text and files."""

    def __init__(self, fmt: str = 'json'):
        if fmt not in FORMATS:
            raise ValueError(f"unsupported format {fmt!r}; expected one of {', '.join(FORMATS)}")
        self.fmt = fmt

    @staticmethod
    def to_data(report: Any) -> Any:
        if isinstance(report, BaseModel):
            return report.model_dump(mode='json', exclude_none=True)
        return report

    def render(self, report: Any) -> str:
        data = self.to_data(report)
        if self.fmt == 'yaml':
            return yaml.safe_dump(data, default_flow_style=False, sort_keys=False)
        return json.dumps(data, indent=2) + "\n"

    def write(self, report: Any, output_path: Optional[str]) -> str:
        """Write to output_path when given; always return the rendered text."""
        text = self.render(report)
        if output_path:
            path = Path(output_path)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
            logger.info(f"Report written to {path} ({self.fmt})")
        return text
