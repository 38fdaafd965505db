"""
Ядро оркестратора - запуск серий испытаний проверок
"""

import time
import logging
from concurrent.futures import ProcessPoolExecutor

from checks import CHECKS
from utils.errors import InputError, UnknownName
from utils.logger import Logger

logger = logging.getLogger("pachner_grassmann")


def run_trial(check_name, options, seed, timing=False):
 """
 Выполнение одного испытания (может вызываться в рабочем процессе)

 Args:
  check_name: Имя проверки из CHECKS
  options: Параметры проверки (field, tri, deform)
  seed: Зерно испытания
  timing: Записывать ли elapsed_ms в отчет

 Returns:
  dict: Отчет испытания

 Raises:
  InputError: Ошибки входных данных не превращаются в проваленный отчет
 """
 check = CHECKS[check_name](**options)
 started = time.perf_counter()
 try:
  report = check.process(seed)
 except InputError:
  raise
 except Exception as e:
  logger.error(f"Ошибка в испытании {check_name} seed={seed}: {e}", exc_info=True)
  report = check.report(seed, False, error=f"{type(e).__name__}: {e}")
 elapsed_ms = int((time.perf_counter() - started) * 1000)

 Logger(to_file=False).log_trial(check_name, seed, report["passed"], elapsed_ms)
 if timing:
  report["elapsed_ms"] = elapsed_ms
 return report


class Orchestrator:
 """
 Основной класс оркестратора: раздает испытания рабочим процессам
 и собирает отчеты в порядке номеров испытаний
 """
 def __init__(self, threads=1):
  """
  Инициализация оркестратора

  Args:
   threads: Число рабочих процессов (1 - выполнение в текущем процессе)
  """
  self.threads = max(1, int(threads))
  self.history = []

 def run_trials(self, check_name, options, seed=0, trials=1, timing=False):
  """
  Запуск серии испытаний; испытание k получает зерно seed + k

  Args:
   check_name: Имя проверки
   options: Параметры проверки
   seed: Начальное зерно
   trials: Число испытаний
   timing: Записывать ли время в отчеты

  Returns:
   list: Отчеты в порядке испытаний

  Raises:
   UnknownName: Неизвестная проверка
  """
  if check_name not in CHECKS:
   raise UnknownName(f"Неизвестная проверка: {check_name}")

  seeds = [seed + k for k in range(trials)]
  logger.info(f"Запуск {check_name}: {trials} испытаний, процессов: {self.threads}")

  if self.threads == 1 or trials == 1:
   reports = [run_trial(check_name, options, s, timing) for s in seeds]
  else:
   workers = min(self.threads, trials)
   with ProcessPoolExecutor(max_workers=workers) as pool:
    futures = [pool.submit(run_trial, check_name, options, s, timing) for s in seeds]
    reports = [future.result() for future in futures]

  passed = sum(1 for r in reports if r["passed"])
  self.history.append({"check": check_name, "trials": trials, "passed": passed})
  logger.info(f"Проверка {check_name}: пройдено {passed} из {trials}")
  return reports
