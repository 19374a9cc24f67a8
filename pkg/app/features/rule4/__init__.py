from app.features.rule4.command import rule4

__all__ = ['rule4']
