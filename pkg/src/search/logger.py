import logging
import socket
import sys

LOG_FORMAT = '%(asctime)s | %(levelname)s | %(message)s'
DATE_FORMAT = '%Y-%m-%d,%H:%M:%S'
# ray reports worker start-up at INFO
QUIET_LOGGERS = ("ray",)
_OWNED = "_oddhole_handler"


def setup_logging(log_file, level, include_host=False):
    """
    Send log records to stderr, and to `log_file` when given; stdout carries
    only the report. Handlers installed by an earlier call are replaced.
    """
    fmt = LOG_FORMAT
    if include_host:
        fmt = fmt.replace(' | %(levelname)s', f' | {socket.gethostname()} | %(levelname)s')
    formatter = logging.Formatter(fmt, datefmt=DATE_FORMAT)

    root = logging.getLogger()
    root.setLevel(level)
    for handler in [h for h in root.handlers if getattr(h, _OWNED, False)]:
        root.removeHandler(handler)
        handler.close()

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(filename=log_file))
    for handler in handlers:
        handler.setFormatter(formatter)
        setattr(handler, _OWNED, True)
        root.addHandler(handler)

    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(max(level, logging.WARNING))
