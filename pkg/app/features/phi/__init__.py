from app.features.phi.command import phi

__all__ = ['phi']
