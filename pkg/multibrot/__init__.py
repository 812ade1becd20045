"""Cross-section constants, boundary scans and renders of multibrot sets."""

__version__ = "0.1.0"
