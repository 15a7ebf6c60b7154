# common/errors.py
# Hierarquia única de erros do projeto. A biblioteca só levanta; quem decide
# exit code e mensagem é a CLI (interfaces/cli/main.py).
from typing import Optional


class ZicError(Exception):
    """Base de todos os erros do pacote."""


class ParameterError(ZicError, ValueError):
    """Parâmetro inválido. `field` guarda o nome do parâmetro (ex.: "m", "snr")."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class RegimeError(ParameterError):
    """Operação chamada fora do regime de interferência em que vale."""


class UnsupportedRegimeError(RegimeError):
    pass


class SchemeParseError(ParameterError):
    """Erro no arquivo de esquema; `line` é 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}", field=None)
        self.line = line


class DistributionError(ParameterError):
    """Tabela de probabilidades inválida (negativa ou soma != 1)."""


class ResourceError(ZicError):
    """Orçamento de enumeração excedido."""


class NumericError(ZicError, ArithmeticError):
    pass


class SingularityError(NumericError):
    pass


class GeometryError(ZicError):
    pass
