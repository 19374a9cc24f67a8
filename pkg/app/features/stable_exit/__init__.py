from app.features.stable_exit.command import stable_exit

__all__ = ['stable_exit']
