from app.features.simulate.command import simulate

__all__ = ['simulate']
