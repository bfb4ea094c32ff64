import re
import logging
import argparse
from pathlib import Path

from xdg import BaseDirectory
from colorama import Fore, Back, Style


def color_text(text, *colorama_args):
    '''
    Colorama text helper function

    Only the groups (Fore, Back, Style) touched by the given codes are reset afterwards,
    so an outer foreground color survives an inner ``Style.BRIGHT`` or ``Style.DIM``.
    Overlapping groups in nested calls still cancel each other.
    '''
    resets = []
    for carg in colorama_args:
        match = re.match(r'.*\[(\d+)m', carg)
        if not match:
            continue
        code = int(match.group(1))
        if 30 <= code <= 39 or 90 <= code <= 97:
            resets.append(Fore.RESET)
        elif 40 <= code <= 49 or 100 <= code <= 107:
            resets.append(Back.RESET)
        elif 0 <= code <= 2 or code == 22:
            resets.append(Style.NORMAL)

    return f"{''.join(colorama_args)}{text}{''.join(resets)}"

def printc(text, *colorama_args):
    print(color_text(text, *colorama_args))

def branch(text, color=Fore.BLUE):
    '''Top-level line of the progress tree.'''
    print(color_text('├─', color), text)

def leaf(text, *colorama_args):
    '''Nested line of the progress tree.'''
    print(color_text('│', Fore.BLUE), color_text(f' > {text}', *colorama_args))


def absolute_path(path: str | Path) -> Path:
    return Path(path).expanduser().absolute()

def xdg_config_path() -> Path:
    return Path(BaseDirectory.save_config_path('tricusp'))

def to_tilde_path(path: Path) -> Path:
    '''
    Abbreviate an absolute path by replacing HOME with "~", if applicable.
    '''
    try:
        return Path(f"~/{path.relative_to(Path.home())}")
    except ValueError:
        return path

def read_text_or_path(value: str) -> str:
    '''Contents of ``value`` when it names an existing file, else ``value`` itself.'''
    try:
        path = absolute_path(value)
        if path.is_file():
            return path.read_text().strip()
    except OSError:
        pass
    return value

def deep_update(mapping: dict, *updating_mappings: dict) -> dict:
    '''Code adapted from pydantic'''
    updated_mapping = mapping.copy()
    for updating_mapping in updating_mappings:
        for k, v in updating_mapping.items():
            if k in updated_mapping and isinstance(updated_mapping[k], dict) and isinstance(v, dict):
                updated_mapping[k] = deep_update(updated_mapping[k], v)
            else:
                updated_mapping[k] = v
    return updated_mapping


class KVPair(argparse.Action):
    '''Collect ``name=value`` arguments into a dict.'''
    def __call__(self, parser, namespace, values, option_string=None):
        kv_dict = getattr(namespace, self.dest, None) or {}
        for value in values:
            if '=' not in value:
                parser.error(f'expected name=value, got "{value}"')
            key, val = value.split('=', 1)
            kv_dict[key.strip()] = val
        setattr(namespace, self.dest, kv_dict)


class ColorFormatter(logging.Formatter):
    COLORS = {
        logging.DEBUG:    Style.DIM,
        logging.INFO:     Fore.BLUE,
        logging.WARNING:  Fore.YELLOW,
        logging.ERROR:    Fore.RED,
        logging.CRITICAL: Fore.RED + Style.BRIGHT,
    }

    def format(self, record):
        message = super().format(record)
        return color_text(message, self.COLORS.get(record.levelno, ''))

def setup_logging(verbosity: int = 0):
    '''
    Route library logs to stderr. ``verbosity`` below zero shows errors only, zero
    warnings, one info and two or more debug messages.
    '''
    level = {-1: logging.ERROR, 0: logging.WARNING, 1: logging.INFO}.get(
        max(verbosity, -1), logging.DEBUG
    )
    handler = logging.StreamHandler()
    handler.setFormatter(ColorFormatter('%(name)s :: %(message)s'))

    root = logging.getLogger('tricusp')
    root.handlers[:] = [handler]
    root.setLevel(level)
    root.propagate = False
