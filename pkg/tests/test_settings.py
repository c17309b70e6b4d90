from src.config.settings import settings
from src.utils.logger import disable_logging, enable_logging, get_logger


def test_oracle_cap_follows_environment(monkeypatch):
    monkeypatch.setenv('TRACKLAB_ORACLE_CAP', '1234')
    assert settings.get_oracle_config() == {'cap': 1234}


def test_enable_and_disable_logging(tmp_path):
    logger = get_logger(__name__)
    enable_logging(str(tmp_path))
    try:
        logger.info("builder started")
        logger.error("builder failed")
    finally:
        disable_logging()
    assert "builder started" in (tmp_path / "tracklab.log").read_text()
    assert "builder failed" in (tmp_path / "tracklab_errors.log").read_text()
    assert not logger.enabled
