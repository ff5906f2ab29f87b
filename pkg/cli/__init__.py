""" Linha de comando (python -m cli) """
