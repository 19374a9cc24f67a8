from app.features.wiener_hopf.command import wiener_hopf

__all__ = ['wiener_hopf']
