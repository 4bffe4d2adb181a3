# Version for polite-seating package
# Bump together with the b-file headers in scripts/generate_bfiles.py
__version__ = "1.0.0"
