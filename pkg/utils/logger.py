"""
Модуль для логирования хода проверок и ошибок
"""

import os
import logging
from datetime import datetime

LOGGER_NAME = "pachner_grassmann"


class Logger:
    """
    Класс для настройки логгера проекта

    Отчеты пишутся в stdout, поэтому все обработчики логгера
    направлены в stderr и в файл.
    """
    def __init__(self, name=LOGGER_NAME, log_dir=None, level=None, to_file=None):
        """
        Инициализация логгера

        Args:
            name: Имя логгера
            log_dir: Директория для хранения логов (по умолчанию LOG_DIR или logs)
            level: Уровень логирования (по умолчанию LOG_LEVEL или INFO)
            to_file: Писать ли лог в файл (по умолчанию LOG_TO_FILE или да)
        """
        log_dir = log_dir or os.getenv("LOG_DIR", "logs")
        if to_file is None:
            to_file = os.getenv("LOG_TO_FILE", "1") not in ("0", "false", "no")

        # Определение уровня логирования
        level = (level or os.getenv("LOG_LEVEL", "INFO")).upper()
        numeric_level = getattr(logging, level, logging.INFO)

        self.logger = logging.getLogger(name)
        self.logger.setLevel(numeric_level)

        # Повторная инициализация не должна дублировать обработчики
        if self.logger.handlers:
            return

        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

        # Обработчик для консоли (stderr)
        console_handler = logging.StreamHandler()
        console_handler.setLevel(numeric_level)
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

        if to_file:
            os.makedirs(log_dir, exist_ok=True)
            log_file = os.path.join(log_dir, f"{name}_{datetime.now().strftime('%Y%m%d')}.log")
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(numeric_level)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

    def debug(self, message):
        """
        Логирование отладочного сообщения

        Args:
            message: Сообщение для логирования
        """
        self.logger.debug(message)

    def info(self, message):
        """
        Логирование информационного сообщения

        Args:
            message: Сообщение для логирования
        """
        self.logger.info(message)

    def warning(self, message):
        """
        Логирование предупреждения

        Args:
            message: Сообщение для логирования
        """
        self.logger.warning(message)

    def error(self, message, exc_info=False):
        """
        Логирование ошибки

        Args:
            message: Сообщение для логирования
            exc_info: Включать ли информацию об исключении
        """
        self.logger.error(message, exc_info=exc_info)

    def critical(self, message, exc_info=True):
        """
        Логирование критической ошибки

        Args:
            message: Сообщение для логирования
            exc_info: Включать ли информацию об исключении
        """
        self.logger.critical(message, exc_info=exc_info)

    def log_trial(self, check, seed, equal, elapsed_ms):
        """
        Логирование результата одного испытания

        Args:
            check: Имя проверки
            seed: Зерно генератора случайных чисел
            equal: Выполнено ли проверяемое тождество
            elapsed_ms: Длительность в миллисекундах
        """
        status = "OK" if equal else "НАРУШЕНО"
        self.info(f"Испытание: {check} | seed: {seed} | {status} | {elapsed_ms}ms")
