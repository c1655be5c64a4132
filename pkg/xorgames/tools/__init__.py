""" Tools for Python """
