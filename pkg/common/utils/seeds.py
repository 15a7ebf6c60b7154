"""
common/utils/seeds.py
---------------------
Utilitário para reprodutibilidade dos testes aleatórios (regiões, tabelas, ρ).
"""
import numpy as np


def rng(seed: int = 42) -> np.random.Generator:
    """Gerador independente (não mexe no estado global)."""
    return np.random.default_rng(seed)
