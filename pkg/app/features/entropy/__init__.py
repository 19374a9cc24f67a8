from app.features.entropy.command import entropy

__all__ = ['entropy']
