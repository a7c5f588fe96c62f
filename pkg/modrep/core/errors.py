class ModRepError(Exception):
    pass


class ModRepPreconditionError(ModRepError):
    pass


class ModRepSizeCapError(ModRepPreconditionError):
    pass


class ModRepInvariantError(ModRepError):
    pass
