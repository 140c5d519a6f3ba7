"""
File utility functions: input digests, encoding detection and output paths.
"""

import hashlib
import logging
from pathlib import Path

import chardet

AUTO_ENCODING = 'auto'


def file_digest(data: bytes) -> str:
    """sha256 of the raw input bytes, recorded in every run report."""
    return 'sha256:' + hashlib.sha256(data).hexdigest()


def decode_bytes(data: bytes, encoding: str = AUTO_ENCODING) -> str:
    """
    Decodes input bytes, detecting the encoding with chardet when asked to.

    Args:
        data (bytes): Raw file contents.
        encoding (str): A codec name, or 'auto' for detection (UTF-8 when undetected).

    Returns:
        str: The decoded text.
    """
    if encoding != AUTO_ENCODING:
        return data.decode(encoding)
    if not data:
        return ''
    detected = chardet.detect(data)
    codec = detected.get('encoding') or 'utf-8'
    # chardet reports pure ASCII as 'ascii'; utf-8 decodes the same bytes
    if codec.lower() == 'ascii':
        codec = 'utf-8'
    logging.info(f"Detected input encoding {codec} (confidence {detected.get('confidence')})")
    return data.decode(codec)


def ensure_parent_dir(path: str) -> Path:
    """Creates the directory an output file will be written to."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    return target
