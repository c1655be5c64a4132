""" Generic structures """
