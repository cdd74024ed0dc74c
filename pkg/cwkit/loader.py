# Copyright (C) 2024 The cwkit Authors
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along
# with this program; if not, write to the Free Software Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.
"""
Discovery of plugin classes (output loggers, verification checks)
inside the subpackages of cwkit.
"""
import importlib
import pkgutil

from . import log, LOG_ROOT


def get_package_modules(packagename, packagepath):
    """Import every plain module of a cwkit subpackage in file name order.

    @return: all loaded modules
    @rtype: iterator of module
    """
    for mod in sorted(pkgutil.iter_modules(packagepath), key=lambda m: m.name):
        if mod.ispkg:
            continue
        name = f"..{packagename}.{mod.name}"
        try:
            yield importlib.import_module(name, __name__)
        except ImportError as msg:
            log.warn(LOG_ROOT, "could not load module %s: %s", mod.name, msg)


def get_plugins(modules, classes):
    """Find all given (sub-)classes in all modules.

    @param modules: the modules to search
    @type modules: iterator of modules
    @return: found classes
    @rtype: iterator of class objects
    """
    for module in modules:
        yield from get_module_plugins(module, classes)


def get_module_plugins(module, classes):
    """Return the subclasses of classes defined in module.
    If the module defines __all__, only those entries are searched and
    in that order, otherwise all names not starting with '_'.
    """
    try:
        names = module.__all__
    except AttributeError:
        names = [x for x in vars(module) if not x.startswith('_')]
    for name in names:
        obj = getattr(module, name, None)
        if not isinstance(obj, type):
            continue
        if any(issubclass(obj, classobj) for classobj in classes):
            yield obj
