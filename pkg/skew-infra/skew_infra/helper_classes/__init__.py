from .instance_file import load_instance, read_instance_file
from .skew_product import SkewProduct

__all__ = ["load_instance", "read_instance_file", "SkewProduct"]
