"""
Logging configuration and setup utilities
"""

import logging
import logging.handlers
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

from app.config import settings

def setup_logging(log_level: Optional[str] = None, log_file: Optional[str] = None):
    """Setup application logging configuration"""

    # Use provided values or fall back to settings
    level = log_level or settings.LOG_LEVEL
    file_path = log_file or settings.LOG_FILE
    numeric_level = getattr(logging, level.upper(), logging.INFO)

    # Configure root logger
    root_logger = logging.getLogger()
    root_logger.setLevel(numeric_level)

    # Clear any existing handlers
    root_logger.handlers.clear()

    # Create formatters
    detailed_formatter = logging.Formatter(
        fmt='%(asctime)s | %(levelname)8s | %(name)s:%(lineno)d | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    simple_formatter = logging.Formatter(
        fmt='%(asctime)s | %(levelname)s | %(message)s',
        datefmt='%H:%M:%S'
    )

    # Console handler on stderr; stdout carries reports
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(simple_formatter)
    root_logger.addHandler(console_handler)

    # File handler with rotation
    if file_path:
        try:
            Path(file_path).parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                filename=file_path,
                maxBytes=10*1024*1024,  # 10MB
                backupCount=5,
                encoding='utf-8'
            )
            file_handler.setLevel(numeric_level)
            file_handler.setFormatter(detailed_formatter)
            root_logger.addHandler(file_handler)
        except Exception as e:
            # If file logging fails, log to console only
            console_handler.setFormatter(detailed_formatter)
            root_logger.warning(f"Failed to setup file logging: {e}")

    app_logger = logging.getLogger("app")
    app_logger.setLevel(numeric_level)

    root_logger.debug(f"Logging configured - Level: {level.upper()}, File: {file_path or '-'}")

class AuditLogger:
    """Logger for corpus audit events"""

    def __init__(self):
        self.logger = logging.getLogger("app.audit")

    def log_event(self, action: str, entry_id: str, details: dict = None):
        """Log audit event"""
        try:
            log_data = {
                "action": action,
                "entry_id": entry_id,
                "timestamp": datetime.now().isoformat(),
                "details": details or {}
            }

            message = f"AUDIT: {action} [{entry_id}]"
            if details:
                message += " " + ", ".join(f"{k}={v}" for k, v in details.items())

            if action == "DERIVED_MISMATCH":
                self.logger.warning(message, extra=log_data)
            else:
                self.logger.info(message, extra=log_data)

        except Exception as e:
            self.logger.error(f"Failed to log audit event: {e}")

class PerformanceLogger:
    """Logger for computation timings"""

    def __init__(self):
        self.logger = logging.getLogger("app.performance")

    def log_computation(self, kind: str, execution_time: float, size: int = None):
        """Log one computation (Groebner run, decomposition, Cech box)"""
        try:
            log_data = {
                "kind": kind,
                "execution_time": execution_time,
                "size": size,
            }

            message = f"{kind} - {execution_time:.3f}s"
            if size is not None:
                message += f" (size {size})"

            # Log slow computations as warnings
            if execution_time > settings.SLOW_COMPUTATION_SECONDS:
                self.logger.warning(f"SLOW {message}", extra=log_data)
            else:
                self.logger.debug(message, extra=log_data)

        except Exception as e:
            self.logger.error(f"Failed to log computation performance: {e}")

# Global logger instances
audit_logger = AuditLogger()
performance_logger = PerformanceLogger()
