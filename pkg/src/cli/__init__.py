from .commands import cli, run

__all__ = ['cli', 'run']
