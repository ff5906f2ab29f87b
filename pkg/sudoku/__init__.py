""" Famílias disjuntas, matrizes Sudoku, busca aleatória e censo de n = 2 """
from sudoku.busca import ExperimentResult, FamilySearch, SearchResult, family_rate_experiment, find_family
from sudoku.censo import CensusResult, census_n2, complete_families_n2, count_sudoku_tables
from sudoku.familias import (DisjointFamily, SudokuMatrix, assemble, decompose, family_from_record, family_to_record,
                             is_sudoku)
