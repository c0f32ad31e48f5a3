from .concurrently import run_concurrently

__all__ = ["run_concurrently"]
