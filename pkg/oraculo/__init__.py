""" Oráculo exaustivo, amostragem e bateria de verificação """
