from .settings import ToolkitSettings, load_settings, with_overrides

__all__ = ['ToolkitSettings', 'load_settings', 'with_overrides']
