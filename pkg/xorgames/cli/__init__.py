""" Command-line interface: `xorgames --help` """
