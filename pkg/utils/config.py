"""
Настройки запуска: переменные окружения и конфигурация команды
"""

import os
from dataclasses import dataclass
from typing import Optional

from utils.errors import InputError

DEFAULT_FIELD = "gf:1000003"
DEFORM_MODES = ("none", "boundary", "random")


def default_field():
    """
    Тег поля по умолчанию (PG_DEFAULT_FIELD)

    Returns:
        str: Тег поля
    """
    return os.getenv("PG_DEFAULT_FIELD", DEFAULT_FIELD)


def default_trials():
    """
    Число испытаний по умолчанию (PG_DEFAULT_TRIALS)

    Returns:
        int: Число испытаний
    """
    value = os.getenv("PG_DEFAULT_TRIALS", "10")
    try:
        return int(value)
    except ValueError:
        raise InputError(f"PG_DEFAULT_TRIALS должно быть целым числом: {value!r}")


def worker_count():
    """
    Число рабочих процессов: PG_THREADS, но не больше числа процессоров

    Returns:
        int: Число процессов (не меньше 1)
    """
    cpus = os.cpu_count() or 1
    value = os.getenv("PG_THREADS")
    if not value:
        return cpus
    try:
        return max(1, min(int(value), cpus))
    except ValueError:
        raise InputError(f"PG_THREADS должно быть целым числом: {value!r}")


@dataclass
class RunConfig:
    """
    Конфигурация одного запуска командной строки
    """
    command: str
    target: Optional[str] = None
    field: str = DEFAULT_FIELD
    seed: int = 0
    trials: int = 1
    tri: Optional[str] = None
    input: Optional[str] = None
    out: Optional[str] = None
    deform: str = "none"
    timing: bool = False
    compare: bool = False
    threads: int = 1

    def validate(self):
        """
        Проверка инвариантов конфигурации

        Raises:
            InputError: Если конфигурация недопустима
        """
        if self.trials < 1:
            raise InputError(f"--trials должно быть не меньше 1, получено {self.trials}")
        if self.deform not in DEFORM_MODES:
            raise InputError(f"Неизвестный режим деформации: {self.deform}")
        if self.threads < 1:
            raise InputError("Число процессов должно быть не меньше 1")
