"""
A module for safely reading matrix descriptions from files or standard input.

The returned text is handed to `parse_action`, which accepts both the
whitespace format (one row per line) and the JSON format {"rows": [[...]]}.

Functions:
    load_matrix_file: Read a matrix file with full error handling.
    read_matrix_stream: Read a matrix description from an open text stream.
"""

import os
from typing import TextIO, Tuple


def load_matrix_file(file_path: str) -> Tuple[bool, str]:
    """
    Read a matrix description file with comprehensive error handling.

    Args:
        file_path (str): Path to a text or JSON matrix file.

    Returns:
        Tuple[bool, str]: (True, file contents) on success,
        (False, error message) otherwise.

    Examples:
        >>> ok, text = load_matrix_file('hopf.txt')
        >>> ok, text = load_matrix_file('missing.txt')
        >>> print(ok, text)
        False File not found: 'missing.txt'
    """
    if not os.path.exists(file_path):
        return False, f"File not found: '{file_path}'"

    if not os.path.isfile(file_path):
        return False, f"Path is not a file: '{file_path}'"

    if not os.access(file_path, os.R_OK):
        return False, f"Permission denied: Cannot read file '{file_path}'"

    try:
        with open(file_path, "r", encoding="utf-8") as file:
            text = file.read()
    except UnicodeDecodeError as e:
        return False, f"Encoding error in file '{file_path}': {str(e)}"
    except IOError as e:
        return False, f"I/O error while reading '{file_path}': {str(e)}"

    if not text.strip():
        return False, f"Empty matrix file: '{file_path}'"
    return True, text


def read_matrix_stream(stream: TextIO) -> Tuple[bool, str]:
    """Read a whole stream (usually stdin); same contract as load_matrix_file."""
    try:
        text = stream.read()
    except (IOError, UnicodeDecodeError) as e:
        return False, f"Failed to read matrix from stream: {str(e)}"
    if not text.strip():
        return False, "Empty matrix on standard input"
    return True, text
