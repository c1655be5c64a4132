""" Symmetric XOR games: representation, sampling, text format """

from .model import SymmetricGame, SampleDescriptor, format_game, parse_game, read_games, write_games
from .sampling import sample_game, sample_bit_matrix, enumerate_bit_matrix, sample_signs
