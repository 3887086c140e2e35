"""Services"""
from .exporter import HasseExporter

__all__ = ["HasseExporter"]
