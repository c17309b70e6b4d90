"""
Logging configuration for tracklab.
Silent by default; enable_logging() attaches a rich console handler and rotating files.
"""

import logging
import logging.handlers
from pathlib import Path
from typing import Optional

from rich.logging import RichHandler

from ..config.settings import settings

ROOT_NAME = "tracklab"


class TrackLabLogger:
    """Thin wrapper over a stdlib logger in the tracklab hierarchy with domain helpers."""

    def __init__(self, name: str = ROOT_NAME):
        self.name = name
        if name == ROOT_NAME or name.startswith(ROOT_NAME + "."):
            self.logger = logging.getLogger(name)
        else:
            self.logger = logging.getLogger(ROOT_NAME).getChild(name)

    @property
    def enabled(self) -> bool:
        return _state["enabled"]

    def debug(self, message: str, **kwargs):
        """Log debug message."""
        if self.enabled:
            self.logger.debug(message, **kwargs)

    def info(self, message: str, **kwargs):
        """Log info message."""
        if self.enabled:
            self.logger.info(message, **kwargs)

    def warning(self, message: str, **kwargs):
        """Log warning message."""
        if self.enabled:
            self.logger.warning(message, **kwargs)

    def error(self, message: str, **kwargs):
        """Log error message."""
        if self.enabled:
            self.logger.error(message, **kwargs)

    def log_validation(self, what: str, issues: list):
        """Log validation results."""
        if not self.enabled:
            return
        if issues:
            self.warning(f"{what}: {len(issues)} issue(s)")
            for issue in issues:
                self.warning(f"  - {issue}")
        else:
            self.debug(f"{what}: valid")

    def log_build_start(self, vertex_count: int, seed_tracks: int):
        """Log the start of a maximal-pattern build."""
        self.info(f"Building maximal pattern: v={vertex_count}, seeded with {seed_tracks} tracks")

    def log_extension(self, step: int, region: int, edge: str, same_track: bool, added: int):
        """Log one successful builder extension."""
        kind = "same-track" if same_track else "distinct-track"
        self.debug(f"Extension {step}: region {region}, edge {edge}, {kind} surgery, +{added} track(s)")

    def log_normalize(self, steps: int, annihilated: int):
        """Log a normalization run."""
        self.debug(f"Normalized in {steps} step(s), {annihilated} curve(s) annihilated")

    def log_theorem_report(self, passed: bool, e_p: int, failures: list):
        """Log a theorem verification outcome."""
        if passed:
            self.info(f"Theorem checks passed, e_P={e_p}")
        else:
            self.warning(f"Theorem checks failed (e_P={e_p}): {failures}")

    def log_trial(self, index: int, v: int, e_p: int, passed: bool, seconds: float):
        """Log one corpus trial."""
        self.info(f"Trial {index}: v={v} e_P={e_p} pass={passed} ({seconds:.3f}s)")


_state = {"enabled": False}


def _setup_handlers(root: logging.Logger, log_dir: Path) -> None:
    console_handler = RichHandler(show_path=False, markup=False)
    console_handler.setLevel(logging.INFO)
    root.addHandler(console_handler)

    file_handler = logging.handlers.RotatingFileHandler(
        log_dir / f"{ROOT_NAME}.log",
        maxBytes=10 * 1024 * 1024,  # 10MB
        backupCount=5
    )
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    ))
    root.addHandler(file_handler)

    error_handler = logging.handlers.RotatingFileHandler(
        log_dir / f"{ROOT_NAME}_errors.log",
        maxBytes=5 * 1024 * 1024,  # 5MB
        backupCount=3
    )
    error_handler.setLevel(logging.ERROR)
    error_handler.setFormatter(file_handler.formatter)
    root.addHandler(error_handler)


def enable_logging(log_dir: Optional[str] = None) -> None:
    """Turn logging on for every tracklab logger."""
    root = logging.getLogger(ROOT_NAME)
    root.handlers.clear()
    root.setLevel(logging.DEBUG)
    config = settings.get_logging_config()
    directory = Path(log_dir or config['log_dir'])
    directory.mkdir(parents=True, exist_ok=True)
    _setup_handlers(root, directory)
    _state["enabled"] = True


def disable_logging() -> None:
    """Silence all tracklab loggers again."""
    root = logging.getLogger(ROOT_NAME)
    for handler in list(root.handlers):
        handler.close()
    root.handlers.clear()
    root.addHandler(logging.NullHandler())
    _state["enabled"] = False


def get_logger(name: str = None) -> TrackLabLogger:
    """Get a logger instance."""
    return TrackLabLogger(name or ROOT_NAME)


if settings.LOG_ENABLED:
    enable_logging()
