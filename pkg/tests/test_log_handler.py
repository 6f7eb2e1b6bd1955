"""Tests for structured logging"""

import json
import logging

from idealforge.log_handler import (
    JsonLineFormatter,
    LogEntry,
    StructuredFormatter,
    get_structured_logger,
    setup_logging,
)


def make_record(**extra):
    record = logging.LogRecord("idealforge.test", logging.WARNING, __file__, 10, "hello", (), None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


class TestStructuredLogger:
    """Test keyword extras on the adapter"""

    def test_keywords_become_extras(self, caplog):
        """Test keyword arguments land on the record"""
        logger = get_structured_logger("idealforge.test", component="tests")
        with caplog.at_level(logging.INFO, logger="idealforge.test"):
            logger.info("Campaign finished", target="rank", failures=0)

        record = caplog.records[-1]
        assert record.getMessage() == "Campaign finished"
        assert record.target == "rank"
        assert record.failures == 0
        assert record.component == "tests"


class TestFormatters:
    """Test text and JSON formatting"""

    def test_text_appends_extras(self):
        """Test extras are rendered after the message"""
        text = StructuredFormatter("%(message)s").format(make_record(index=17))
        assert text == "hello | index=17"

    def test_text_without_extras(self):
        """Test plain records are unchanged"""
        assert StructuredFormatter("%(message)s").format(make_record()) == "hello"

    def test_json_line(self):
        """Test one JSON object per record"""
        data = json.loads(JsonLineFormatter().format(make_record(seed=5)))
        assert data["message"] == "hello"
        assert data["level"] == "WARNING"
        assert data["extra"] == {"seed": 5}

    def test_unserializable_extras(self):
        """Test values json cannot encode are stringified"""
        entry = LogEntry.from_record(make_record(value={1, 2}))
        assert isinstance(entry.extra["value"], str)


class TestSetupLogging:
    """Test root handler configuration"""

    def test_level_and_formatter(self):
        """Test the level is applied and JSON is selected"""
        setup_logging("DEBUG", fmt="json")
        root = logging.getLogger()
        assert root.level == logging.DEBUG
        assert isinstance(root.handlers[0].formatter, JsonLineFormatter)
        setup_logging("WARNING")
        assert isinstance(logging.getLogger().handlers[0].formatter, StructuredFormatter)

    def test_log_file(self, tmp_path):
        """Test a log file handler is added"""
        path = tmp_path / "forge.log"
        setup_logging("INFO", log_file=str(path))
        logging.getLogger("idealforge.test").info("written")
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "written" in path.read_text()
        setup_logging("WARNING")
