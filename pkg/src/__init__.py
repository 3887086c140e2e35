# Signed-lattice toolkit
__version__ = "0.1.0"
