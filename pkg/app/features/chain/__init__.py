from app.features.chain.command import chain

__all__ = ['chain']
