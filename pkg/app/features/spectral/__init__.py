from app.features.spectral.command import spectral

__all__ = ['spectral']
