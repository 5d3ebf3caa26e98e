__name__ = "metaice"
__version__ = "0.1.0"
__author__ = "Joseph Contreras Jr."
__license__ = "MIT"
__copyright__ = "Copyright 2020 Joseph Contreras Jr."
