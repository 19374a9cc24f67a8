from app.features.string.command import string

__all__ = ['string']
